// Lab assignment
import java.util.Scanner;

public class GradeBook17
{
	public static void main(String[] args)
	{
		Scanner sc = new Scanner(System.in);
		System.out.print("Enter a number: ");
		int input = sc.nextInt();
		System.out.println("You entered " + input);
		System.out.println("Hello, World!");
		sc.close();
	}
}
