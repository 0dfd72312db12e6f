import java.util.Scanner;

public class Practice115 {
	public static int digitSum(int x) {
		int sum = 0;
		while (x > 0) {
			sum += x % 10;
			x /= 10;
		}
		return sum;
	}

	public static void main(String[] args) {
		Scanner sc = new Scanner(System.in);
		System.out.print("Enter a number: ");
		int input = sc.nextInt();
		System.out.println("You entered " + input);
		System.out.println("Digits: " + digitSum(1343));
		sc.close();
	}
}
