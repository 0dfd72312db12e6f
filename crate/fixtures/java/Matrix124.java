import java.util.Scanner;

/**
 * Matrix124 program.
 */
public class Matrix124 {
    public static void main(String[] args) {
        Scanner sc = new Scanner(System.in);
        System.out.print("Enter a number: ");
        int input = sc.nextInt();
        System.out.println("You entered " + input);
        System.out.println("Hello Java");
        sc.close();
    }
}
